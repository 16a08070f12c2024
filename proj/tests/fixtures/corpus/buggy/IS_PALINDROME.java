public class IS_PALINDROME {
    public static boolean is_palindrome(String text) {
        int left = 0;
        int right = text.length() - 2;
        while (left < right) {
            if (text.charAt(left) != text.charAt(right)) {
                return false;
            }
            left++;
            right--;
        }
        return true;
    }
}
