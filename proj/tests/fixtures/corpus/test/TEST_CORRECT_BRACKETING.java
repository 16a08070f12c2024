public class TEST_CORRECT_BRACKETING {
    public static void main(String[] args) {
        check(CORRECT_BRACKETING.correct_bracketing("<>"), "<>");
        check(CORRECT_BRACKETING.correct_bracketing("<<><>>"), "<<><>>");
        check(!CORRECT_BRACKETING.correct_bracketing("><<>"), "><<>");
        check(!CORRECT_BRACKETING.correct_bracketing("<"), "<");
        check(!CORRECT_BRACKETING.correct_bracketing("<<<<"), "<<<<");
    }

    static void check(boolean ok, String what) {
        if (!ok) {
            throw new AssertionError(what);
        }
    }
}
