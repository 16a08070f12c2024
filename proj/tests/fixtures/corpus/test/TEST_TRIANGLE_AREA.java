public class TEST_TRIANGLE_AREA {
    public static void main(String[] args) {
        check(TRIANGLE_AREA.triangle_area(3, 4, 5) == 6.0, "3 4 5");
        check(TRIANGLE_AREA.triangle_area(1, 2, 10) == -1, "invalid");
        check(TRIANGLE_AREA.triangle_area(4, 8, 5) == 8.18, "4 8 5");
        check(TRIANGLE_AREA.triangle_area(2, 2, 2) == 1.73, "equilateral");
    }

    static void check(boolean ok, String what) {
        if (!ok) {
            throw new AssertionError(what);
        }
    }
}
