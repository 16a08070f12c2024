public class FIB {
    public static int fib(int n) {
        int a = 0;
        int b = 1;
        int step = 0;
        while (step < n) {
            int next = a + b;
            a = b;
            b = next;
            step++;
        }
        return a;
    }
}
