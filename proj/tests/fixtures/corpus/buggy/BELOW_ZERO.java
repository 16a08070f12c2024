public class BELOW_ZERO {
    public static boolean below_zero(int[] operations) {
        int balance = 0;
        boolean dipped = false;
        for (int i = 0; i < operations.length; i++) {
            balance += operations[i];
            if (balance <= 0) {
                dipped = true;
            }
        }
        return dipped;
    }
}
