public class CORRECT_BRACKETING {
    public static boolean correct_bracketing(String brackets) {
        int depth = 0;
        boolean balanced = true;
        for (int i = 0; i < brackets.length(); i++) {
            char b = brackets.charAt(i);
            if (b == '<') {
                depth += 1;
            } else {
                depth -= 1;
            }
            if (depth < 0) {
                balanced = false;
            }
        }
        return balanced;
    }
}
