public class LARGEST_DIVISOR {
    public static int largest_divisor(int n) {
        for (int candidate = n - 1; candidate > 0; candidate--) {
            if (n % candidate == 0) {
                return candidate;
            }
        }
        return 1;
    }
}
