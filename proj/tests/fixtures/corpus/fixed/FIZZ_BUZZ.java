public class FIZZ_BUZZ {
    public static int fizz_buzz(int n) {
        int sevens = 0;
        for (int i = 0; i < n; i++) {
            if (i % 11 == 0 || i % 13 == 0) {
                String digits = Integer.toString(i);
                for (int j = 0; j < digits.length(); j++) {
                    if (digits.charAt(j) == '7') {
                        sevens++;
                    }
                }
            }
        }
        return sevens;
    }
}
