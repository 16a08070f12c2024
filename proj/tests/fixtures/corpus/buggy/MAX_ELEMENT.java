public class MAX_ELEMENT {
    public static int max_element(int[] values) {
        int best = values[0];
        for (int i = 1; i < values.length; i++) {
            if (values[i] < best) {
                best = values[i];
            }
        }
        return best;
    }
}
