public class TEST_DECODE_SHIFT {
    public static void main(String[] args) {
        check(DECODE_SHIFT.decode_shift(DECODE_SHIFT.encode_shift("hello")).equals("hello"), "hello");
        check(DECODE_SHIFT.decode_shift("fgh").equals("abc"), "fgh");
        check(DECODE_SHIFT.encode_shift("xyz").equals("cde"), "xyz");
        check(DECODE_SHIFT.decode_shift("abc").equals("vwx"), "abc");
    }

    static void check(boolean ok, String what) {
        if (!ok) {
            throw new AssertionError(what);
        }
    }
}
