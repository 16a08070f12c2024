public class TEST_GREATEST_COMMON_DIVISOR {
    public static void main(String[] args) {
        check(GREATEST_COMMON_DIVISOR.greatest_common_divisor(3, 7) == 1, "3 7");
        check(GREATEST_COMMON_DIVISOR.greatest_common_divisor(10, 15) == 5, "10 15");
        check(GREATEST_COMMON_DIVISOR.greatest_common_divisor(49, 14) == 7, "49 14");
        check(GREATEST_COMMON_DIVISOR.greatest_common_divisor(144, 60) == 12, "144 60");
    }

    static void check(boolean ok, String what) {
        if (!ok) {
            throw new AssertionError(what);
        }
    }
}
