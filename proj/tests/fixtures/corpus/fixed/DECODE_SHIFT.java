public class DECODE_SHIFT {
    public static String encode_shift(String text) {
        StringBuilder out = new StringBuilder();
        for (int i = 0; i < text.length(); i++) {
            int offset = text.charAt(i) - 'a';
            out.append((char) ('a' + (offset + 5) % 26));
        }
        return out.toString();
    }

    public static String decode_shift(String text) {
        StringBuilder out = new StringBuilder();
        for (int i = 0; i < text.length(); i++) {
            int offset = text.charAt(i) - 'a';
            out.append((char) ('a' + (offset + 21) % 26));
        }
        return out.toString();
    }
}
