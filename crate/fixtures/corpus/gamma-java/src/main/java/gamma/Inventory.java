package gamma;

import java.util.HashMap;
import java.util.Map;

/** Stock levels keyed by SKU. */
public class Inventory {
    private final Map<String, Integer> stock = new HashMap<>();

    public void add(Item item, int quantity) {
        if (quantity <= 0) {
            throw new IllegalArgumentException("quantity must be positive");
        }
        stock.merge(item.getSku(), quantity, Integer::sum);
    }

    public boolean remove(Item item, int quantity) {
        int have = count(item);
        if (have < quantity) {
            return false;
        }
        stock.put(item.getSku(), have - quantity);
        return true;
    }

    public int count(Item item) {
        return stock.getOrDefault(item.getSku(), 0);
    }

    public int distinctItems() {
        return (int) stock.values().stream().filter(q -> q > 0).count();
    }
}
