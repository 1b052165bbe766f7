package gamma;

public class Pricing {
    private Pricing() {
    }

    public static long applyDiscount(long cents, int percent) {
        if (percent < 0 || percent > 100) {
            throw new IllegalArgumentException("percent out of range");
        }
        return cents - cents * percent / 100;
    }

    public static long withTax(long cents, double rate) {
        return Math.round(cents * (1.0 + rate));
    }

    public static String format(long cents) {
        return String.format("%d.%02d", cents / 100, cents % 100);
    }
}
