public class TEST_CHANGE_BASE {
    public static void main(String[] args) {
        check(CHANGE_BASE.change_base(8, 3).equals("22"), "8 3");
        check(CHANGE_BASE.change_base(9, 3).equals("100"), "9 3");
        check(CHANGE_BASE.change_base(234, 2).equals("11101010"), "234 2");
        check(CHANGE_BASE.change_base(16, 2).equals("10000"), "16 2");
        check(CHANGE_BASE.change_base(0, 7).equals("0"), "0 7");
    }

    static void check(boolean ok, String what) {
        if (!ok) {
            throw new AssertionError(what);
        }
    }
}
