public class TEST_ADD {
    public static void main(String[] args) {
        check(ADD.add(0, 1) == 1, "add(0, 1)");
        check(ADD.add(5, 7) == 12, "add(5, 7)");
        check(ADD.add(7, 5) == 12, "add(7, 5)");
    }

    static void check(boolean ok, String what) {
        if (!ok) {
            throw new AssertionError(what);
        }
    }
}
