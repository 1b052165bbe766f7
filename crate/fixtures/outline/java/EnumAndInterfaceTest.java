package shapes;

import org.junit.Test;

import static org.junit.Assert.assertEquals;

public class EnumAndInterfaceTest {
    enum Kind {
        SQUARE, CIRCLE;

        int corners() {
            return this == SQUARE ? 4 : 0;
        }
    }

    interface Area {
        double area();

        default boolean isEmpty() {
            return area() == 0.0;
        }
    }

    @Test
    public void squareHasFourCorners() {
        assertEquals(4, Kind.SQUARE.corners());
    }

    @Test(expected = IllegalArgumentException.class)
    public void rejectsNegative() {
        throw new IllegalArgumentException("negative");
    }

    @Test(timeout = 1000)
    public void lambdaArea() {
        Area a = () -> 2.0;
        assertEquals(2.0, a.area(), 1e-9);
    }
}
