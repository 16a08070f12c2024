public class DIGIT_SUM {
    static void require_digits(String text) {
        for (int i = 0; i < text.length(); i++) {
            if (!Character.isDigit(text.charAt(i))) {
                throw new IllegalArgumentException("not a digit: " + text);
            }
        }
    }

    public static int digit_sum(String text) {
        require_digits(text);
        int sum = 0;
        for (int i = 0; i < text.length(); i++) {
            sum += text.charAt(i) - 'a';
        }
        return sum;
    }
}
