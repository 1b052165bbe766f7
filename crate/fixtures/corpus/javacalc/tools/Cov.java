import java.io.FileWriter;
import java.io.IOException;
import java.util.Set;
import java.util.TreeSet;

/**
 * Line hit recorder for sources instrumented by jcov.py. Writes a JaCoCo-style
 * XML report at shutdown.
 */
public final class Cov {
    private static final Set<Integer> HITS = new TreeSet<Integer>();

    static {
        Runtime.getRuntime().addShutdownHook(new Thread() {
            @Override
            public void run() {
                dump();
            }
        });
    }

    private Cov() {
    }

    public static synchronized void hit(int line) {
        HITS.add(Integer.valueOf(line));
    }

    private static synchronized void dump() {
        String out = System.getProperty("jcov.out");
        String source = System.getProperty("jcov.source");
        String lines = System.getProperty("jcov.lines", "");
        StringBuilder sb = new StringBuilder("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<report name=\"jcov\">\n");
        sb.append("  <package name=\"\">\n    <sourcefile name=\"").append(source).append("\">\n");
        for (String s : lines.split(",")) {
            if (s.isEmpty()) {
                continue;
            }
            int nr = Integer.parseInt(s);
            boolean hit = HITS.contains(Integer.valueOf(nr));
            sb.append("      <line nr=\"").append(nr).append("\" mi=\"").append(hit ? 0 : 1)
                .append("\" ci=\"").append(hit ? 1 : 0).append("\"/>\n");
        }
        sb.append("    </sourcefile>\n  </package>\n</report>\n");
        try {
            FileWriter w = new FileWriter(out);
            try {
                w.write(sb.toString());
            } finally {
                w.close();
            }
        } catch (IOException e) {
            System.err.println("cannot write coverage: " + e);
        }
    }
}
