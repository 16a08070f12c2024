public class TEST_SUM_SQUARES {
    public static void main(String[] args) {
        check(SUM_SQUARES.sum_squares(new int[] {}) == 0, "empty");
        check(SUM_SQUARES.sum_squares(new int[] {1, 2, 3}) == 14, "123");
        check(SUM_SQUARES.sum_squares(new int[] {-1, -5, 2}) == 30, "negative");
    }

    static void check(boolean ok, String what) {
        if (!ok) {
            throw new AssertionError(what);
        }
    }
}
