public class REMOVE_VOWELS {
    public static String remove_vowels(String text) {
        StringBuilder kept = new StringBuilder();
        for (int i = 0; i < text.length(); i++) {
            char c = text.charAt(i);
            if ("aeiouAEIOU".indexOf(c) == -1) {
                kept.append(c);
            }
        }
        return kept.toString();
    }
}
