package text;

import org.junit.jupiter.api.Assertions;
import org.junit.jupiter.api.BeforeEach;
import org.junit.jupiter.api.DisplayName;
import org.junit.jupiter.api.Test;
import org.junit.jupiter.params.ParameterizedTest;
import org.junit.jupiter.params.provider.ValueSource;

class ParserTests {
    private Parser parser;

    @BeforeEach
    void init() {
        parser = new Parser();
    }

    @Test
    @DisplayName("parses { braces } in strings")
    void parsesBracesInStrings() {
        String src = "a = \"{ not a block }\";";
        Assertions.assertEquals(1, parser.parse(src).size());
    }

    @ParameterizedTest
    @ValueSource(strings = {"x", "y", "z"})
    void parsesSingleIdentifiers(String id) {
        Assertions.assertTrue(parser.parse(id).isEmpty());
    }

    @org.junit.jupiter.api.Test
    void qualifiedAnnotation() {
        char c = '}';
        Assertions.assertEquals('}', c);
    }
}
