public class GcdIterative {
public static int gcd(int first, int second) {
    while (second != 0) {
        int temp = second;
        second = first % second;
        first = temp;
    }
    return first;
}
}
