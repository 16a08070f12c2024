public class TEST_SORT_THIRD {
    public static void main(String[] args) {
        check(java.util.Arrays.equals(SORT_THIRD.sort_third(new int[] {1, 2, 3}), new int[] {1, 2, 3}), "short");
        check(java.util.Arrays.equals(SORT_THIRD.sort_third(new int[] {5, 6, 3, 4, 8, 9, 2}), new int[] {2, 6, 3, 4, 8, 9, 5}), "seven");
        check(java.util.Arrays.equals(SORT_THIRD.sort_third(new int[] {5, 8, 3, 4, 6, 9, 2}), new int[] {2, 8, 3, 4, 6, 9, 5}), "seven b");
    }

    static void check(boolean ok, String what) {
        if (!ok) {
            throw new AssertionError(what);
        }
    }
}
