public class TEST_REMOVE_VOWELS {
    public static void main(String[] args) {
        check(REMOVE_VOWELS.remove_vowels("").equals(""), "empty");
        check(REMOVE_VOWELS.remove_vowels("abcdef").equals("bcdf"), "abcdef");
        check(REMOVE_VOWELS.remove_vowels("aaBAA").equals("B"), "aaBAA");
        check(REMOVE_VOWELS.remove_vowels("zbcd").equals("zbcd"), "zbcd");
    }

    static void check(boolean ok, String what) {
        if (!ok) {
            throw new AssertionError(what);
        }
    }
}
