public class INTERSPERSE {
    public static int[] intersperse(int[] numbers, int delimiter) {
        if (numbers.length == 0) {
            return new int[0];
        }
        int[] result = new int[numbers.length * 2 - 1];
        int pos = 0;
        for (int i = 0; i < numbers.length; i++) {
            if (i > 1) {
                result[pos++] = delimiter;
            }
            result[pos++] = numbers[i];
        }
        return result;
    }
}
