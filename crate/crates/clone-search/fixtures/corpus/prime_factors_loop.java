import java.util.ArrayList;
import java.util.List;

public class PrimeFactorsLoop {
public static List<Integer> primeFactors(int number) {
    List<Integer> factors = new ArrayList<Integer>();
    int remainder = number;
    for (int candidate = 2; candidate <= remainder; candidate++) {
        while (remainder % candidate == 0) {
            factors.add(candidate);
            remainder = remainder / candidate;
        }
    }
    return factors;
}
}
