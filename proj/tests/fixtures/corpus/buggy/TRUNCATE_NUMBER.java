public class TRUNCATE_NUMBER {
    public static double truncate_number(double number) {
        double whole = Math.floor(number);
        double fraction = whole - number;
        return fraction;
    }
}
