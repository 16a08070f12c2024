public class TEST_BELOW_ZERO {
    public static void main(String[] args) {
        check(!BELOW_ZERO.below_zero(new int[] {}), "empty");
        check(!BELOW_ZERO.below_zero(new int[] {1, 2, -3, 1, 2, -3}), "touches zero");
        check(BELOW_ZERO.below_zero(new int[] {1, 2, -4, 5, 6}), "dips");
        check(BELOW_ZERO.below_zero(new int[] {1, -1, 2, -2, 5, -5, 4, -5}), "dips late");
    }

    static void check(boolean ok, String what) {
        if (!ok) {
            throw new AssertionError(what);
        }
    }
}
