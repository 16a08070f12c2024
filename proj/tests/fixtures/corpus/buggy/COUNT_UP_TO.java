public class COUNT_UP_TO {
    static boolean is_prime(int n) {
        boolean prime = true;
        for (int d = 2; d * d <= n; d++) {
            if (n % d == 0) {
                prime = false;
            }
        }
        return prime;
    }

    public static int[] count_up_to(int n) {
        int[] buffer = new int[n];
        int found = 0;
        int candidate = 2;
        while (candidate <= n) {
            if (is_prime(candidate)) {
                buffer[found] = candidate;
                found++;
            }
            candidate++;
        }
        int[] primes = new int[found];
        System.arraycopy(buffer, 0, primes, 0, found);
        return primes;
    }
}
