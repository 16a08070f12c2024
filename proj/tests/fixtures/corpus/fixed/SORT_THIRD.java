public class SORT_THIRD {
    public static int[] sort_third(int[] values) {
        int[] result = java.util.Arrays.copyOf(values, values.length);
        for (int i = 0; i < result.length; i += 3) {
            for (int j = i + 3; j < result.length; j += 3) {
                if (result[j] < result[i]) {
                    int tmp = result[i];
                    result[i] = result[j];
                    result[j] = tmp;
                }
            }
        }
        return result;
    }
}
