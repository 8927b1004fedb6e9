public class GcdSubtract {
public static int gcd(int left, int right) {
    while (left != right) {
        if (left > right) {
            left = left - right;
        } else {
            right = right - left;
        }
    }
    return left;
}
}
