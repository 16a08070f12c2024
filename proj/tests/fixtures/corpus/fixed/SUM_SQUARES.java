public class SUM_SQUARES {
    public static int sum_squares(int[] values) {
        int total = 0;
        for (int i = 0; i < values.length; i++) {
            int square = values[i] * values[i];
            total += square;
        }
        return total;
    }
}
