public class TEST_IS_PRIME {
    public static void main(String[] args) {
        check(!IS_PRIME.is_prime(6), "6");
        check(IS_PRIME.is_prime(101), "101");
        check(IS_PRIME.is_prime(11), "11");
        check(IS_PRIME.is_prime(13441), "13441");
        check(!IS_PRIME.is_prime(4), "4");
        check(!IS_PRIME.is_prime(1), "1");
        check(!IS_PRIME.is_prime(25), "25");
        check(!IS_PRIME.is_prime(9), "9");
    }

    static void check(boolean ok, String what) {
        if (!ok) {
            throw new AssertionError(what);
        }
    }
}
