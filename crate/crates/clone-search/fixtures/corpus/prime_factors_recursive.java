import java.util.List;

public class PrimeFactorsRecursive {
public static void collectPrimeFactors(int value, int factor, List<Integer> result) {
    if (value <= 1) {
        return;
    }
    if (value % factor == 0) {
        result.add(factor);
        collectPrimeFactors(value / factor, factor, result);
    } else {
        collectPrimeFactors(value, factor + 1, result);
    }
}
}
