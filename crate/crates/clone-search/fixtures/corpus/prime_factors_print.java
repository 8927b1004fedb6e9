public class PrimeFactorsPrint {
public static void printPrimeFactors(int number) {
    int n = number;
    for (int p = 2; p * p <= n; p++) {
        while (n % p == 0) {
            System.out.println(p);
            n = n / p;
        }
    }
    if (n > 1) {
        System.out.println(n);
    }
}
}
