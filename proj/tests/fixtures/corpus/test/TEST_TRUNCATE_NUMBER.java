public class TEST_TRUNCATE_NUMBER {
    public static void main(String[] args) {
        check(Math.abs(TRUNCATE_NUMBER.truncate_number(3.5) - 0.5) < 1e-9, "3.5");
        check(Math.abs(TRUNCATE_NUMBER.truncate_number(1.25) - 0.25) < 1e-9, "1.25");
        check(Math.abs(TRUNCATE_NUMBER.truncate_number(123.0)) < 1e-9, "123.0");
    }

    static void check(boolean ok, String what) {
        if (!ok) {
            throw new AssertionError(what);
        }
    }
}
