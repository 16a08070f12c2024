public class MEAN_ABSOLUTE_DEVIATION {
    public static double mean_absolute_deviation(double[] numbers) {
        double total = 0.0;
        for (int i = 0; i < numbers.length; i++) {
            total += numbers[i];
        }
        double mean = total / numbers.length;
        double deviation = 0.0;
        for (int i = 0; i < numbers.length; i++) {
            deviation += Math.abs(numbers[i] - mean);
        }
        return deviation / numbers.length;
    }
}
