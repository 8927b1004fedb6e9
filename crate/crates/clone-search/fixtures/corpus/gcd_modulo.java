public class GcdModulo {
public static long gcd(long numerator, long denominator) {
    long remainder = numerator % denominator;
    while (remainder != 0) {
        numerator = denominator;
        denominator = remainder;
        remainder = numerator % denominator;
    }
    return denominator;
}
}
