import java.util.ArrayList;

public class PrimeFactorsList {
public static ArrayList<Long> primeFactorization(long input) {
    ArrayList<Long> factors = new ArrayList<Long>();
    long current = input;
    long test = 2;
    while (test * test <= current) {
        while (current % test == 0) {
            factors.add(test);
            current = current / test;
        }
        test = test + 1;
    }
    if (current > 1) {
        factors.add(current);
    }
    return factors;
}
}
