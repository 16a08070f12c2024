public class TEST_COUNT_UP_TO {
    public static void main(String[] args) {
        check(java.util.Arrays.equals(COUNT_UP_TO.count_up_to(5), new int[] {2, 3}), "5");
        check(java.util.Arrays.equals(COUNT_UP_TO.count_up_to(11), new int[] {2, 3, 5, 7}), "11");
        check(COUNT_UP_TO.count_up_to(0).length == 0, "0");
        check(java.util.Arrays.equals(COUNT_UP_TO.count_up_to(20), new int[] {2, 3, 5, 7, 11, 13, 17, 19}), "20");
        check(COUNT_UP_TO.count_up_to(1).length == 0, "1");
    }

    static void check(boolean ok, String what) {
        if (!ok) {
            throw new AssertionError(what);
        }
    }
}
