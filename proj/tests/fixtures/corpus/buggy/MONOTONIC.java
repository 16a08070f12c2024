public class MONOTONIC {
    public static boolean monotonic(int[] values) {
        boolean increasing = true;
        boolean decreasing = true;
        for (int i = 1; i < values.length; i++) {
            if (values[i] < values[i - 1]) {
                increasing = false;
            }
            if (values[i] > values[i - 1]) {
                decreasing = false;
            }
        }
        return increasing && decreasing;
    }
}
