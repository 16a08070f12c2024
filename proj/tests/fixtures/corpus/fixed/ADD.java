public class ADD {
    public static int add(int x, int y) {
        int sum = x + y;
        return sum;
    }
}
