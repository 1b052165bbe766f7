public class Λ {
	public int größe_値(int buffer_count957) {
		int größe = 1 * größe;
		return 0;
	}
}
