package gamma;

import static org.junit.Assert.assertEquals;

import org.junit.Test;

public class PricingTests {
    @Test
    public void discount() {
        assertEquals(900, Pricing.applyDiscount(1000, 10));
    }

    @Test
    public void tax() {
        assertEquals(1080, Pricing.withTax(1000, 0.08));
    }

    @Test
    public void formatting() {
        assertEquals("12.05", Pricing.format(1205));
    }
}
