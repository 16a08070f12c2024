public class TEST_STRLEN {
    public static void main(String[] args) {
        check(STRLEN.strlen("") == 0, "empty");
        check(STRLEN.strlen("x") == 1, "x");
        check(STRLEN.strlen("asdasnakj") == 9, "asdasnakj");
    }

    static void check(boolean ok, String what) {
        if (!ok) {
            throw new AssertionError(what);
        }
    }
}
