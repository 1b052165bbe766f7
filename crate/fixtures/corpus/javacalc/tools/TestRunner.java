import java.io.FileWriter;
import java.io.IOException;
import java.lang.reflect.InvocationTargetException;
import java.lang.reflect.Method;
import java.util.Map;
import java.util.TreeMap;

/**
 * Runs every @Test method of one class and writes a JSON verdict per method.
 *
 * usage: TestRunner CLASS RESULTS_JSON
 */
public class TestRunner {
    public static void main(String[] args) throws Exception {
        Class<?> cls = Class.forName(args[0]);
        Map<String, String> verdicts = new TreeMap<String, String>();
        boolean ok = true;
        for (Method m : cls.getDeclaredMethods()) {
            if (!m.isAnnotationPresent(org.junit.Test.class)) {
                continue;
            }
            try {
                m.invoke(cls.getDeclaredConstructor().newInstance());
                verdicts.put(m.getName(), "passed");
            } catch (InvocationTargetException e) {
                System.err.println(m.getName() + ": " + e.getCause());
                verdicts.put(m.getName(), "failed");
                ok = false;
            }
        }
        write(args[1], verdicts);
        System.out.println("ran " + verdicts.size() + " tests");
        System.exit(ok ? 0 : 1);
    }

    private static void write(String path, Map<String, String> verdicts) throws IOException {
        StringBuilder sb = new StringBuilder("{");
        String sep = "";
        for (Map.Entry<String, String> e : verdicts.entrySet()) {
            sb.append(sep).append('"').append(e.getKey()).append("\": \"").append(e.getValue()).append('"');
            sep = ", ";
        }
        sb.append("}\n");
        FileWriter w = new FileWriter(path);
        try {
            w.write(sb.toString());
        } finally {
            w.close();
        }
    }
}
