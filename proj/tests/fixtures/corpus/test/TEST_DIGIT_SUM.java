public class TEST_DIGIT_SUM {
    public static void main(String[] args) {
        check(DIGIT_SUM.digit_sum("") == 0, "empty");
        check(DIGIT_SUM.digit_sum("123") == 6, "123");
        check(DIGIT_SUM.digit_sum("9090") == 18, "9090");
        boolean rejected = false;
        try {
            DIGIT_SUM.digit_sum("12a");
        } catch (IllegalArgumentException e) {
            rejected = true;
        }
        check(rejected, "rejects letters");
    }

    static void check(boolean ok, String what) {
        if (!ok) {
            throw new AssertionError(what);
        }
    }
}
