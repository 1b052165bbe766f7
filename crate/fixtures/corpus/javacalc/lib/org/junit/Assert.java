package org.junit;

import java.util.Arrays;
import java.util.Objects;

/** The subset of JUnit 4 assertions the bundled tests use. */
public final class Assert {
    private Assert() {
    }

    public static void fail(String message) {
        throw new AssertionError(message);
    }

    public static void fail() {
        fail("failed");
    }

    public static void assertTrue(boolean condition) {
        if (!condition) {
            fail("expected true");
        }
    }

    public static void assertFalse(boolean condition) {
        assertTrue(!condition);
    }

    public static void assertEquals(long expected, long actual) {
        if (expected != actual) {
            fail("expected " + expected + " but was " + actual);
        }
    }

    public static void assertEquals(Object expected, Object actual) {
        if (!Objects.equals(expected, actual)) {
            fail("expected " + expected + " but was " + actual);
        }
    }

    public static void assertArrayEquals(int[] expected, int[] actual) {
        if (!Arrays.equals(expected, actual)) {
            fail("expected " + Arrays.toString(expected) + " but was " + Arrays.toString(actual));
        }
    }
}
