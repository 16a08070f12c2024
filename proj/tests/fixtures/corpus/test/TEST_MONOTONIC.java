public class TEST_MONOTONIC {
    public static void main(String[] args) {
        check(MONOTONIC.monotonic(new int[] {1, 2, 4, 10}), "up");
        check(MONOTONIC.monotonic(new int[] {4, 1, 0, -10}), "down");
        check(!MONOTONIC.monotonic(new int[] {1, 20, 4, 10}), "mixed");
        check(MONOTONIC.monotonic(new int[] {9, 9, 9, 9}), "flat");
    }

    static void check(boolean ok, String what) {
        if (!ok) {
            throw new AssertionError(what);
        }
    }
}
