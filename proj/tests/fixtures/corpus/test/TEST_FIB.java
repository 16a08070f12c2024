public class TEST_FIB {
    public static void main(String[] args) {
        check(FIB.fib(10) == 55, "fib(10)");
        check(FIB.fib(1) == 1, "fib(1)");
        check(FIB.fib(8) == 21, "fib(8)");
        check(FIB.fib(11) == 89, "fib(11)");
        check(FIB.fib(12) == 144, "fib(12)");
    }

    static void check(boolean ok, String what) {
        if (!ok) {
            throw new AssertionError(what);
        }
    }
}
