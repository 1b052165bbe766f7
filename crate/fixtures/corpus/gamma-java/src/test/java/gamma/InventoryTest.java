package gamma;

import static org.junit.Assert.assertEquals;
import static org.junit.Assert.assertFalse;
import static org.junit.Assert.assertTrue;

import org.junit.Before;
import org.junit.Test;

public class InventoryTest {
    private Inventory inv;
    private final Item pen = new Item("P1", "pen", 150);

    @Before
    public void setUp() {
        inv = new Inventory();
    }

    @Test
    public void addAccumulates() {
        inv.add(pen, 2);
        inv.add(pen, 3);
        assertEquals(5, inv.count(pen));
    }

    @Test
    public void removeMoreThanStockFails() {
        inv.add(pen, 1);
        assertFalse(inv.remove(pen, 2));
        assertEquals(1, inv.count(pen));
    }

    @Test
    public void removeToZeroDropsDistinctCount() {
        inv.add(pen, 1);
        assertTrue(inv.remove(pen, 1));
        assertEquals(0, inv.distinctItems());
    }
}
