public class CHANGE_BASE {
    public static String change_base(int x, int base) {
        if (x == 0) {
            return "0";
        }
        StringBuilder digits = new StringBuilder();
        while (x > 0) {
            digits.append(x % base);
            x = x / base;
        }
        return digits.reverse().toString();
    }
}
