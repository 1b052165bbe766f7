package gamma;

import static org.junit.Assert.assertEquals;
import static org.junit.Assert.assertNotEquals;

import org.junit.Test;

public class ItemTest {
    @Test
    public void equalItemsHaveEqualHashes() {
        Item a = new Item("A1", "apple", 100);
        Item b = new Item("A1", "Apple", 100);
        assertEquals(a, b);
        assertEquals(a.hashCode(), b.hashCode());
    }

    @Test
    public void priceMatters() {
        assertNotEquals(new Item("A1", "apple", 100), new Item("A1", "apple", 120));
    }

    @Test(expected = IllegalArgumentException.class)
    public void negativePriceRejected() {
        new Item("A1", "apple", -1);
    }
}
