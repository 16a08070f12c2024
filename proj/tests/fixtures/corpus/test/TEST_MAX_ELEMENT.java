public class TEST_MAX_ELEMENT {
    public static void main(String[] args) {
        check(MAX_ELEMENT.max_element(new int[] {1, 2, 3}) == 3, "small");
        check(MAX_ELEMENT.max_element(new int[] {5, 3, -5, 2, -3, 3, 9, 0, 124, 1, -10}) == 124, "mixed");
        check(MAX_ELEMENT.max_element(new int[] {-4, -2, -9}) == -2, "negative");
    }

    static void check(boolean ok, String what) {
        if (!ok) {
            throw new AssertionError(what);
        }
    }
}
