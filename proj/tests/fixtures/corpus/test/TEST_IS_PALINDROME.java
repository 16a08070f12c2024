public class TEST_IS_PALINDROME {
    public static void main(String[] args) {
        check(IS_PALINDROME.is_palindrome(""), "empty");
        check(IS_PALINDROME.is_palindrome("aba"), "aba");
        check(IS_PALINDROME.is_palindrome("aaaaa"), "aaaaa");
        check(!IS_PALINDROME.is_palindrome("zbcd"), "zbcd");
        check(IS_PALINDROME.is_palindrome("xywyx"), "xywyx");
        check(!IS_PALINDROME.is_palindrome("xywyz"), "xywyz");
    }

    static void check(boolean ok, String what) {
        if (!ok) {
            throw new AssertionError(what);
        }
    }
}
