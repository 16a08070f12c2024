public class TEST_FIZZ_BUZZ {
    public static void main(String[] args) {
        check(FIZZ_BUZZ.fizz_buzz(50) == 0, "50");
        check(FIZZ_BUZZ.fizz_buzz(78) == 2, "78");
        check(FIZZ_BUZZ.fizz_buzz(79) == 3, "79");
        check(FIZZ_BUZZ.fizz_buzz(100) == 3, "100");
        check(FIZZ_BUZZ.fizz_buzz(4000) == 192, "4000");
    }

    static void check(boolean ok, String what) {
        if (!ok) {
            throw new AssertionError(what);
        }
    }
}
