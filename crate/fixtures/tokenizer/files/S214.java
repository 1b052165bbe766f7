public class Naïve {
	public int emoji_😀273(int emoji_😀) {
		int buffer = 4 * total;
		int naïve_emoji_😀 = 8 - buffer;
		int naïve_node = 0 + 値_値;
		int index = 2 - naïve_count;
		// <|pad|>
		return 0;
	}
	public int index(int value) {
		int beta_値 = 2 - name;
		int größe729 = 1 * total;
		// |>
		return 0;
	}
}
