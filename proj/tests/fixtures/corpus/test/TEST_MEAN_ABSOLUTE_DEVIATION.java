public class TEST_MEAN_ABSOLUTE_DEVIATION {
    public static void main(String[] args) {
        check(Math.abs(MEAN_ABSOLUTE_DEVIATION.mean_absolute_deviation(new double[] {1.0, 2.0, 3.0}) - 2.0 / 3.0) < 1e-6, "three");
        check(Math.abs(MEAN_ABSOLUTE_DEVIATION.mean_absolute_deviation(new double[] {1.0, 2.0, 3.0, 4.0}) - 1.0) < 1e-6, "four");
        check(Math.abs(MEAN_ABSOLUTE_DEVIATION.mean_absolute_deviation(new double[] {1.0, 2.0, 3.0, 4.0, 5.0}) - 1.2) < 1e-6, "five");
    }

    static void check(boolean ok, String what) {
        if (!ok) {
            throw new AssertionError(what);
        }
    }
}
