package gamma;

import java.util.List;

final class Util {
    private Util() {
    }

    static <T> T last(List<T> items) {
        return items.isEmpty() ? null : items.get(items.size() - 1);
    }

    static String repeat(char c, int n) {
        StringBuilder sb = new StringBuilder();
        for (int i = 0; i < n; i++) {
            sb.append(c);
        }
        return sb.toString();
    }
}
