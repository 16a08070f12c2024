public class TEST_Spin {
    public static void main(String[] args) {
        if (Spin.spin(1) != 0) {
            throw new AssertionError("spin");
        }
    }
}
