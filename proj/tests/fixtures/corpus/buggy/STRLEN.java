public class STRLEN {
    public static int strlen(String text) {
        int length = 0;
        int index = 0;
        while (index < text.length()) {
            length = index;
            index++;
        }
        return length;
    }
}
