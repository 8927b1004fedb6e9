public class PalindromeCheckA {
public static boolean isPalindrome(String text) {
    int left = 0;
    int right = text.length() - 1;
    while (left < right) {
        if (text.charAt(left) != text.charAt(right)) {
            return false;
        }
        left = left + 1;
        right = right - 1;
    }
    return true;
}
}
