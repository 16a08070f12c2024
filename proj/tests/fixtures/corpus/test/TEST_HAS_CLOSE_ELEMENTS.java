public class TEST_HAS_CLOSE_ELEMENTS {
    public static void main(String[] args) {
        check(HAS_CLOSE_ELEMENTS.has_close_elements(new double[] {1.0, 2.0, 3.9, 4.0, 5.0, 2.2}, 0.3), "0.3");
        check(!HAS_CLOSE_ELEMENTS.has_close_elements(new double[] {1.0, 2.0, 3.9, 4.0, 5.0, 2.2}, 0.05), "0.05");
        check(HAS_CLOSE_ELEMENTS.has_close_elements(new double[] {1.0, 2.0, 5.9, 4.0, 5.0}, 0.95), "0.95");
        check(!HAS_CLOSE_ELEMENTS.has_close_elements(new double[] {1.0, 2.0, 3.0, 4.0, 5.0}, 0.5), "0.5");
        check(HAS_CLOSE_ELEMENTS.has_close_elements(new double[] {1.0, 1.1}, 0.5), "pair");
    }

    static void check(boolean ok, String what) {
        if (!ok) {
            throw new AssertionError(what);
        }
    }
}
