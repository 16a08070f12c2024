public class IS_PRIME {
    public static boolean is_prime(int n) {
        if (n < 2) {
            return false;
        }
        boolean prime = true;
        int k = 2;
        while (k * k < n) {
            if (n % k == 0) {
                prime = false;
            }
            k++;
        }
        return prime;
    }
}
