public class VOWELS_COUNT {
    static boolean is_vowel(char c) {
        return "aeiouAEIOU".indexOf(c) >= 0;
    }

    public static int vowels_count(String word) {
        int count = 0;
        for (int i = 0; i < word.length(); i++) {
            char c = word.charAt(i);
            if (is_vowel(c)) {
                count += 1;
            }
        }
        char last = word.length() == 0 ? ' ' : word.charAt(word.length() - 1);
        if (last == 'y' || last == 'Y') {
            count += 1;
        }
        return count;
    }
}
