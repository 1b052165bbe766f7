package gamma;

import java.util.ArrayList;
import java.util.List;

public class Order {
    private final List<Item> lines = new ArrayList<>();

    public Order add(Item item) {
        lines.add(item);
        return this;
    }

    public long total() {
        long sum = 0;
        for (Item i : lines) {
            sum += i.getPriceCents();
        }
        return sum;
    }

    public int size() {
        return lines.size();
    }
}
