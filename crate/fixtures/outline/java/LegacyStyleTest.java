package legacy;

import junit.framework.TestCase;

public class LegacyStyleTest extends TestCase {
    private StringBuilder sb;

    protected void setUp() throws Exception {
        super.setUp();
        sb = new StringBuilder();
    }

    public void testAppend() {
        sb.append("ab");
        assertEquals("ab", sb.toString());
    }

    public void testReverse() {
        sb.append("abc").reverse();
        assertEquals("cba", sb.toString());
    }

    public void testInsert() {
        sb.append("ac").insert(1, 'b');
        assertEquals("abc", sb.toString());
    }

    private static String helper(String s) {
        return s.trim();
    }
}
