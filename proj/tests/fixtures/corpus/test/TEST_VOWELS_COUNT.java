public class TEST_VOWELS_COUNT {
    public static void main(String[] args) {
        check(VOWELS_COUNT.vowels_count("abcde") == 2, "abcde");
        check(VOWELS_COUNT.vowels_count("Alone") == 3, "Alone");
        check(VOWELS_COUNT.vowels_count("key") == 2, "key");
        check(VOWELS_COUNT.vowels_count("bye") == 1, "bye");
        check(VOWELS_COUNT.vowels_count("ACEDY") == 3, "ACEDY");
    }

    static void check(boolean ok, String what) {
        if (!ok) {
            throw new AssertionError(what);
        }
    }
}
