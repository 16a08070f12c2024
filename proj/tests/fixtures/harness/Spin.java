public class Spin {
    public static int spin(int n) {
        int i = 0;
        while (n > 0) {
            i++;
        }
        return i;
    }
}
