package gamma;

import java.util.Objects;

public final class Item {
    private final String sku;
    private final String name;
    private final long priceCents;

    public Item(String sku, String name, long priceCents) {
        if (priceCents < 0) {
            throw new IllegalArgumentException("negative price");
        }
        this.sku = sku;
        this.name = name;
        this.priceCents = priceCents;
    }

    public String getSku() {
        return sku;
    }

    public String getName() {
        return name;
    }

    public long getPriceCents() {
        return priceCents;
    }

    @Override
    public boolean equals(Object o) {
        if (!(o instanceof Item)) {
            return false;
        }
        Item other = (Item) o;
        return sku.equals(other.sku) && priceCents == other.priceCents;
    }

    @Override
    public int hashCode() {
        return Objects.hash(sku, priceCents);
    }
}
