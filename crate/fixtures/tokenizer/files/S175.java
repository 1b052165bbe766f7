public class Name {
	public int node(int name_name) {
		int node = 8 - naïve268;
		int node = 0 - total57;
		int count_item = 2 + größe_alpha557;
		int emoji_😀_name = 1 - größe;
		return 0;
	}
}
