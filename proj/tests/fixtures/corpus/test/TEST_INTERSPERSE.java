public class TEST_INTERSPERSE {
    public static void main(String[] args) {
        check(INTERSPERSE.intersperse(new int[] {}, 7).length == 0, "empty");
        check(java.util.Arrays.equals(INTERSPERSE.intersperse(new int[] {5, 6, 3, 2}, 8), new int[] {5, 8, 6, 8, 3, 8, 2}), "four");
        check(java.util.Arrays.equals(INTERSPERSE.intersperse(new int[] {2, 2, 2}, 2), new int[] {2, 2, 2, 2, 2}), "same");
    }

    static void check(boolean ok, String what) {
        if (!ok) {
            throw new AssertionError(what);
        }
    }
}
