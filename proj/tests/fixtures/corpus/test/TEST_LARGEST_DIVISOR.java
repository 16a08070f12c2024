public class TEST_LARGEST_DIVISOR {
    public static void main(String[] args) {
        check(LARGEST_DIVISOR.largest_divisor(3) == 1, "3");
        check(LARGEST_DIVISOR.largest_divisor(7) == 1, "7");
        check(LARGEST_DIVISOR.largest_divisor(10) == 5, "10");
        check(LARGEST_DIVISOR.largest_divisor(100) == 50, "100");
        check(LARGEST_DIVISOR.largest_divisor(49) == 7, "49");
    }

    static void check(boolean ok, String what) {
        if (!ok) {
            throw new AssertionError(what);
        }
    }
}
