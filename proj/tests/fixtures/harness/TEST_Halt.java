public class TEST_Halt {
    public static void main(String[] args) {
        Runtime.getRuntime().halt(3);
    }
}
