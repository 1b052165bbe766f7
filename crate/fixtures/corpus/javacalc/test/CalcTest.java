import org.junit.Test;

import static org.junit.Assert.assertArrayEquals;
import static org.junit.Assert.assertEquals;

public class CalcTest {
    @Test
    public void testAdd() {
        assertEquals(5, Calc.add(2, 3));
    }

    @Test
    public void testScale() {
        assertArrayEquals(new int[] {3, 6}, Calc.scale(new int[] {1, 2}, 3));
    }
}
