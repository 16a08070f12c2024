public class HAS_CLOSE_ELEMENTS {
    public static boolean has_close_elements(double[] numbers, double threshold) {
        for (int i = 0; i < numbers.length; i++) {
            for (int j = i + 1; j < numbers.length; j++) {
                double distance = Math.abs(numbers[i] - numbers[j]);
                if (distance < threshold) {
                    return true;
                }
            }
        }
        return false;
    }
}
